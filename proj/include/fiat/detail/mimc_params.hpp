// MiMC-7 round constants over the BN254 scalar field (91 rounds;
// c_0 = 0, c_i = SHA-256("fiat.mimc.bn254.r<i>") mod p).  Generated by
// tools/oracles/mimc_ref.py; do not edit.
#pragma once

namespace fiat::detail {

inline constexpr int kMimcRounds = 91;

inline constexpr const char* kMimcRoundConstants[91] = {
    "0",
    "11137542566562990956050286739332649640886769706270311271240520323164192493352",
    "21126810958335612535151944102760956996225562121082459978157234661712764490217",
    "20933753928070677656693117310811651111651704998161025025640409156450657817484",
    "10088124851307107740657596970317489362143413704693298497288579836926095258277",
    "1074904847077030414636937302331922111382258867121632961322566135174150605137",
    "6969677659024192375639499424605852366900352538359338701924535227508312494257",
    "9563212357418579232388449869704309351659270316241487842975373949569594203290",
    "10177155572361144057602063091870382078870662719238940235819927897259372095434",
    "20422156911180262943856136274998149135681595604192203241083809462076713482049",
    "6235180372658173222966106186725464188171142083861658826533993191532460445873",
    "8987707734407446242154105424265071548449264099360950200650551381773796368992",
    "5528555134142551312870883078162046446732461376292935124968142662495377872694",
    "3173635223719021574972215882558252621007901292528180643367855495517234589767",
    "17980198644532059112503449247686310263500807082482809723643541618075038276005",
    "17786764399582557368005740889768798831698685905646942934686916140773922505404",
    "19035465990675887389917989115490829120132213937032842113505290979113299881923",
    "16427439616560727931947952085367949874640191315912368996240219750999331123968",
    "14289085032530438655834862451808602580153728619056736754374420999077286498169",
    "6152313698177503903731074582089019662807887044293498660361616722481820601935",
    "6806489131305144625437654918049787866233924477011755887963572136946210367748",
    "3496376161753431389265104173540701772311536034368467028420651502756255989957",
    "19329235910656585547172687096618125604157728782190830733039879753294717388567",
    "9703094293876363586640175176512978696726038952757153289089594861501552620071",
    "10654894373742768890551986500907960260382424043348652964593142171683283049414",
    "5657286779389894635261586669508473987226986652282874275673351814137970409644",
    "1705393516852785819527622063345540002691380923524454991125329525882880437001",
    "13092808058952275266012467571416279145202766848062505350810483877320596910838",
    "16640401104695982486873320936078785062349980305021286263087428074609764766870",
    "18269238213763893931963069985150339629026307710566032920541545289176746156798",
    "14656333560010974101063828150408751843227837416990033226174605261178916899894",
    "15259772593102168900497796788723880960115137524315952322836797312419766830215",
    "21131258264260826345519551444177770101871863322174349306960759093354961607597",
    "15075793067979168895040677104814870726913200028213169332074352831161517637513",
    "6710128129201860934911156769593848388691843693164298025014563877446985135009",
    "11875236627382022784591427103768798684980687513311229572976498177418457415714",
    "15418423614074195402922617092154693288718687444426538358142075960564190873540",
    "1865136423310545616050395858559126924599330633542110114879635418421637214784",
    "17992833982909263443502914255340480213997528050613892462191966539232207203778",
    "19311263885609132606338593097869906429717952467593521209422543586343470972938",
    "13550032611886903655019429313622125219576836178633718062399219230702092366243",
    "12377588134151151173827357940266865203409976921542746693473048292077088310790",
    "6155240942657721816427952348692163874346324583120937405966680794482134110100",
    "14545609408105518196110609803773934798304970206317357802566388231617485310448",
    "3777848708285237227692257809830091688198239022488074453322203979065492549111",
    "1936840857710196901826668073903223961094726159648076515665771827252617912063",
    "21028833419800483751882295609533793087122083542232311546527481900175714272487",
    "12665326284021561465627720832910335489508103234360821904654942785339307631730",
    "17504075558163219229846101832572291687853104711713374204568138006272956684706",
    "1776538008214422477719870762169715731823561437878411637650900576620759838954",
    "17134444173956777877224158259327384067854773953357883555609436498837944765135",
    "1102379721684641116370035478121227916261913560750068189266230285404293061018",
    "9837108594787448098734410865721978881457946307169843406527299626382280160377",
    "5563300607866794164422167671359917080420168115479531907386997264578880333177",
    "946033551890901321595452725261014709003967162486176403887619257469317922116",
    "16191629696382324213916572488404830601066052353554574382444699377775011756690",
    "17262808475887325059845169506380858140675232059866280597585433158894396039087",
    "21053138262731848344014924616435752452152200788287378739488743903011950765971",
    "12500783718180913269536148178606847137406146394414246659396039491930109476334",
    "20511348133742093300863873046004974924317912651929715729073788636601038915064",
    "1963139118534017921004387627588963319432641502080684832097214414265575169427",
    "9479871956835995436492682610915854639877927280248625305979323814706556164905",
    "11148887034248556882677165517216554736028085050099263231923411440998393537156",
    "5753625201778183249638258282012332574077699501790900051295966946763932444060",
    "8547196111089485654068468129654041828685106689440379831664955645522146358727",
    "17391147707241295920516746501198990653783371738166725388256030779476645811628",
    "2829469647663957505421176765527516329358532238068685009585287730208466699354",
    "15715518683522566089607655675971301342596899854906130207242237882248981157717",
    "20495352911610273299711618395048348002324658360508847285293106542009699827644",
    "2864849023907361623088322400877823488010522985635002306149517921353549974926",
    "19176202610660443583488054138498825155918525854691574265635810149980602836185",
    "2974816341030487674699561706018197667623895093088724115973339422909592673674",
    "20711470411248076249526824315425325196757442349883414591979050775791507167879",
    "2940087042182025305806737318333576848815410236831394530658308169512003021078",
    "4664995363082253155823928815727663906077744575282856096398584713380873688667",
    "2351943582277293288561566353985027068976382025924773053846014979127306512266",
    "12648649701574001791387338643809383012296780666597358328292376003754138550915",
    "10222653202475401021140388785288677141091869430266678554101678141410973553025",
    "7774024093115309665781778816808912106482512233250399874997724513015438953960",
    "79394921098190188033675216094240090851847209452030926546272424962179724430",
    "4492420507589456813902625432889270998049992787013001917251326593260901397098",
    "5286659983856636739710500694251431735659121506918099830662262353514504897569",
    "16335439992797550991933378421029428696080784944068459803446860636336923935606",
    "21215996705322407420405112377978706415582107715812809066541438481892447931426",
    "13870044230669737231264127848009990819819403259755015296984057635101334404602",
    "8750247646144598647933122220907576763551302189620025935038527312578683756038",
    "1841454121477811128264291107799741394533703965184998167113978771619288211588",
    "7566659380021605323044981081907114376254374323732681402358883830731523782535",
    "4264912247797522678628003587914557279020955806290230148335184888051778215985",
    "4253356821408979411465152027777907519050113304375090984185754341008793852794",
    "17214681041813086858572695706489455088962879126808070968045897842998243243749",
};

}  // namespace fiat::detail
